#![no_main]

use libfuzzer_sys::fuzz_target;

// parse must reject bad input with an error, never a panic
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(doc) = bitsudoku::parse(text) {
            let m = doc.order() * doc.order();
            assert_eq!(doc.clues().len() + doc.blanks().len(), m * m);
        }
    }
});
