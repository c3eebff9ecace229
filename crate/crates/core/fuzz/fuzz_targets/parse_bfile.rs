#![no_main]

use bellwords::bfile::parse_bfile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(table) = parse_bfile(text) {
        let again = parse_bfile(&table.render("")).expect("rendered b-file parses");
        assert_eq!(again.entries(), table.entries());
    }
});
