#![no_main]

use libfuzzer_sys::fuzz_target;
use matmor::lorentzian::is_ultra_log_concave;
use matmor::rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(seq) = text
        .split_whitespace()
        .map(rational::parse)
        .collect::<Result<Vec<_>, _>>()
    else {
        return;
    };
    if seq.len() <= 64 {
        let _ = is_ultra_log_concave(&seq);
    }
});
