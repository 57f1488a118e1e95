#![no_main]

use libfuzzer_sys::fuzz_target;
use matmor::io::Descriptor;
use matmor::lorentzian::is_lorentzian;
use matmor::HomogeneousPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = Descriptor::parse(text).and_then(Descriptor::into_polynomial) else {
        return;
    };
    if p.nvars() > 4 || p.total_degree().unwrap_or(0) > 6 {
        return;
    }
    if let Ok(h) = HomogeneousPolynomial::from_polynomial(p) {
        let _ = is_lorentzian(&h);
    }
});
