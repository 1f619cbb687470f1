//! Fuzzes the ASCII polyomino parser: arbitrary bytes must either parse
//! into a polyomino that round-trips through the renderer or be rejected
//! with an error, never panic.

#![no_main]

use libfuzzer_sys::fuzz_target;

use convexcount::lattice::Polyomino;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = Polyomino::from_ascii(text) {
        // parse-render-parse must be a fixed point
        let rendered = p.normalize().to_ascii();
        let again = Polyomino::from_ascii(&rendered).expect("rendered form parses");
        assert_eq!(again.normalize().to_ascii(), rendered);
    }
});
