#![no_main]

use kvcc::{parse_components, write_components};
use libfuzzer_sys::fuzz_target;

// Parsed component lists are canonical, so writing and re-reading is exact.
fuzz_target!(|data: &[u8]| {
    let Ok(components) = parse_components(data) else { return };
    let mut text = Vec::new();
    write_components(&components, &mut text).expect("writing to memory");
    let again = parse_components(text.as_slice()).expect("written list parses");
    assert_eq!(components, again);
});
