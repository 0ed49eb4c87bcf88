#![no_main]

use bitsudoku::{parse, Format};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = parse(text) else { return };
    let generic = doc
        .render(Format::Generic)
        .expect("generic renders every order");
    assert_eq!(parse(&generic).as_ref(), Ok(&doc));
    if doc.order() == 3 {
        let classic = doc.render(Format::Classic).unwrap();
        assert_eq!(parse(&classic).as_ref(), Ok(&doc));
    }
});
