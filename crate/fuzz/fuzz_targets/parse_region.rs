#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::parse_region;
use normcheck::RegionSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(RegionSpec::Rect(r)) = parse_region(text) {
        assert!(r.x_min < r.x_max && r.y_min < r.y_max);
    }
});
