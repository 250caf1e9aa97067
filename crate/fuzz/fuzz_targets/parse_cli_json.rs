#![no_main]

use dilated_floor::cli::output;
use dilated_floor::Witness;
use libfuzzer_sys::fuzz_target;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Whatever deserializes must survive a serialize/deserialize round trip.
fn roundtrip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) {
    let Ok(value) = serde_json::from_str::<T>(text) else { return };
    let encoded = serde_json::to_string(&value).expect("serializes");
    let back: T = serde_json::from_str(&encoded).expect("own output parses");
    assert_eq!(back, value);
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    roundtrip::<output::Value>(text);
    roundtrip::<output::LevelSet>(text);
    roundtrip::<output::Classification>(text);
    roundtrip::<output::Oracle>(text);
    roundtrip::<output::Raster>(text);
    roundtrip::<output::Sweep>(text);
    roundtrip::<output::Selftest>(text);
    roundtrip::<Witness>(text);
});
