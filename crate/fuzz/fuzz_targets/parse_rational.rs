#![no_main]

use dilated_floor::Rat;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(value) = text.parse::<Rat>() else { return };
    let shown = value.to_string();
    let again: Rat = shown.parse().expect("display output parses");
    assert_eq!(again, value);
    assert_eq!(again.to_string(), shown);
    assert!(value.denom() > &0.into());
});
