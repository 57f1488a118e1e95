#![no_main]

//! Input: `{"graph": {...}, "rotation": {...}}`.

use libfuzzer_sys::fuzz_target;
use matmor::io::{graph_from_value, rotation_from_value};
use matmor::morphism::geometric_dual;
use serde_json::Value;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<Value>(data) else {
        return;
    };
    let (Ok(g), Ok(rot)) = (
        graph_from_value(&v["graph"]),
        rotation_from_value(&v["rotation"]),
    ) else {
        return;
    };
    if g.edges().len() > 64 {
        return;
    }
    if let Ok(d) = geometric_dual(&g, &rot) {
        let darts: usize = d.face_sizes().iter().sum();
        assert_eq!(darts, 2 * g.edges().len());
    }
});
