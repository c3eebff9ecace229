#![no_main]

use bellwords::args::parse_int_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_int_list(text) {
        let joined: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        assert_eq!(parse_int_list(&joined.join(",")).unwrap(), values);
    }
});
