#![no_main]

use bellwords::output::{emit_json, parse_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(terms) = parse_json(text) {
        assert_eq!(parse_json(&emit_json(&terms)).unwrap(), terms);
    }
});
