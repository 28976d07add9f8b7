//! Fuzz the exact rational parser: no panic on any input, and every
//! accepted value must round-trip through its canonical string form.

#![no_main]

use libfuzzer_sys::fuzz_target;
use quadlie::scalar::{format_scalar, parse_scalar};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(value) = parse_scalar(text) {
        let canonical = format_scalar(&value);
        let reparsed = parse_scalar(&canonical).expect("canonical form must parse");
        assert_eq!(reparsed, value);
        assert_eq!(format_scalar(&reparsed), canonical);
    }
});
