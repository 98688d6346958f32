#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::parse_complex_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_complex_list(text) {
        assert!(!values.is_empty());
        assert!(values.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
    }
});
