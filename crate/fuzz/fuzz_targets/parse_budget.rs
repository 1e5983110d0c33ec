#![no_main]

use libfuzzer_sys::fuzz_target;
use mincds::Budget;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(b) = text.parse::<Budget>() {
            // A parsed budget renders to something that parses back equal.
            assert_eq!(b.to_string().parse::<Budget>().unwrap(), b);
        }
    }
});
