#![no_main]

use dilated_floor::raster::parse_ascii;
use libfuzzer_sys::fuzz_target;
use num_bigint::BigInt;

// First 8 bytes pick the left abscissa, next 8 the top ordinate; the rest is
// the grid text.
fuzz_target!(|data: &[u8]| {
    if data.len() < 16 {
        return;
    }
    let n_min = i64::from_le_bytes(data[..8].try_into().unwrap());
    let y_top = BigInt::from(i64::from_le_bytes(data[8..16].try_into().unwrap()));
    let Ok(text) = std::str::from_utf8(&data[16..]) else { return };
    let Ok(pixels) = parse_ascii(text, n_min, &y_top) else { return };
    assert_eq!(pixels.len(), text.bytes().filter(|&b| b == b'#').count());
    assert!(pixels.windows(2).all(|w| w[0] < w[1]));
    assert!(pixels.iter().all(|p| p.n >= n_min && p.y <= y_top));
});
