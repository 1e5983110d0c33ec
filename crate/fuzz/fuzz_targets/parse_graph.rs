#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = mincds::parse_graph(text) {
            // Anything that parses must survive a render + reparse unchanged.
            let again = mincds::parse_graph(&mincds::write_graph(&g)).unwrap();
            assert_eq!(again, g);
        }
    }
});
