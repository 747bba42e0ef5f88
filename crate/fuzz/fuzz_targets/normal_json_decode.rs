#![no_main]
use libfuzzer_sys::fuzz_target;
use qweb::normalform::NormalMorphism;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(n) = NormalMorphism::from_json(s) {
            assert_eq!(NormalMorphism::from_json(&n.to_json().to_string()).unwrap(), n);
        }
    }
});
