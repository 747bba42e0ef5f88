#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if qweb::cli::parse(s).is_ok() {
            let _ = qweb::cli::parse_morphism(s);
        }
    }
});
