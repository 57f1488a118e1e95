#![no_main]

use libfuzzer_sys::fuzz_target;
use matmor::io::{rational_from_value, rational_to_value};
use matmor::rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(q) = rational::parse(text) {
        assert_eq!(rational::parse(&q.to_string()).unwrap(), q);
        assert_eq!(rational_from_value(&rational_to_value(&q), "q").unwrap(), q);
    }
    if let Ok(v) = serde_json::from_str(text) {
        if let Ok(q) = rational_from_value(&v, "q") {
            assert!(q.denom() > &0.into());
        }
    }
});
