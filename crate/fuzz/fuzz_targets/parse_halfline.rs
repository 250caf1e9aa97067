#![no_main]

use dilated_floor::HalfLine;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(set) = text.parse::<HalfLine>() else { return };
    let shown = set.to_string();
    let again: HalfLine = shown.parse().expect("display output parses");
    assert_eq!(again, set);
    if let Some(e) = set.endpoint() {
        assert!(set.is_subset_of(&set));
        let _ = set.contains(e);
    }
});
