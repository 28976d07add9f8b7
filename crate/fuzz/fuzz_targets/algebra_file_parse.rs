//! Fuzz the algebra description parser: arbitrary bytes must either parse
//! into a validated algebra or return an error, never panic. Accepted
//! inputs must survive an export/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use quadlie_cli::file::{export_algebra, parse_algebra_file, to_json};

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(input) = parse_algebra_file(text) else {
        return;
    };
    let exported = to_json(&export_algebra(
        &input.algebra,
        input.form.as_ref(),
        input.omega.as_ref(),
    ));
    let reparsed = parse_algebra_file(&exported).expect("exported file must parse");
    assert_eq!(reparsed.algebra, input.algebra);
});
