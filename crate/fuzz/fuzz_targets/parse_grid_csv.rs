#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::parse_grid_csv;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rows) = parse_grid_csv(text) {
        assert!(rows.iter().all(|(z, v)| z.re.is_finite() && z.im.is_finite() && v.to_f64() >= 0.0));
    }
});
