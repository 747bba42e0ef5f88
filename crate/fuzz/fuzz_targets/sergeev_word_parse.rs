#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        for n in 1..=3 {
            if let Ok(w) = qweb::sergeev::parse_word(s, n) {
                if w.len() <= 12 {
                    let _ = qweb::sergeev::straighten(n, &w);
                }
            }
        }
    }
});
