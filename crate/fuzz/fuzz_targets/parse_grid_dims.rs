#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::parse_grid_dims;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((nx, ny)) = parse_grid_dims(text) {
        assert!(nx >= 2 && ny >= 2);
    }
});
