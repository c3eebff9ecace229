#![no_main]

use bellwords::wordmodel::{decompose, Word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(word) = text.parse::<Word>() {
        assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        if let Some(&b) = word.letters().first() {
            if b > 0 {
                let parts = decompose(&word, b).unwrap();
                assert_eq!(Word::concat(&parts), word);
            }
        }
    }
});
