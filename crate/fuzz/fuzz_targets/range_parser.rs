//! Fuzzes the CLI range syntax: arbitrary strings must parse into a
//! non-empty inclusive range of non-negative integers or be rejected,
//! never panic.

#![no_main]

use libfuzzer_sys::fuzz_target;

use convexcount::cli::parse_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(range) = parse_range(text) {
        assert!(*range.start() >= 0);
        assert!(range.start() <= range.end());
    }
});
