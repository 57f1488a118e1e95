//! Rewrites `fixtures/*.json` from the constructors in `matmor::io::fixtures`.

use std::path::Path;

fn main() -> matmor::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (name, text) in matmor::io::fixtures::regenerate()? {
        std::fs::write(dir.join(name), text).expect("fixtures directory is writable");
    }
    Ok(())
}
