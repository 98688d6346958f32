#![no_main]

use libfuzzer_sys::fuzz_target;
use normcheck::io::{parse_matrix_json, write_matrix_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_matrix_json(text) {
        assert_eq!(m.as_slice().len(), m.rows() * m.cols());
        assert_eq!(parse_matrix_json(&write_matrix_json(&m)).unwrap(), m);
    }
});
