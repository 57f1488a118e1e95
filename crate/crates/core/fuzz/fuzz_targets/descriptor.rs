#![no_main]

use libfuzzer_sys::fuzz_target;
use matmor::io::Descriptor;

fuzz_target!(
    init: {
        // keep rank tables and flag checks small
        std::env::set_var("MATMOR_MAX_N", "10");
    },
    |data: &[u8]| {
        let Ok(text) = std::str::from_utf8(data) else {
            return;
        };
        let Ok(d) = Descriptor::parse(text) else {
            return;
        };
        let Ok(canonical) = d.to_canonical_string() else {
            return;
        };
        let again = Descriptor::parse(&canonical).expect("canonical output parses");
        assert_eq!(again.to_canonical_string().unwrap(), canonical);
    }
);
