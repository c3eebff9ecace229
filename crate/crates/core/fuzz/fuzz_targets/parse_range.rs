#![no_main]

use bellwords::args::parse_range;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_range::<usize>(text) {
        assert!(r.start() <= r.end());
    }
    let _ = parse_range::<u32>(text);
});
