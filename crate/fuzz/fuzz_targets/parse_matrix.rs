#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::{parse_matrix, write_matrix_json, write_matrix_market};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_matrix(text) {
        assert_eq!(parse_matrix(&write_matrix_json(&m)).unwrap(), m);
        assert_eq!(parse_matrix(&write_matrix_market(&m)).unwrap(), m);
    }
});
