#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::{parse_matrix_market, write_matrix_market};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_matrix_market(text) {
        assert!(m.as_slice().iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        assert_eq!(parse_matrix_market(&write_matrix_market(&m)).unwrap(), m);
    }
});
