#![cfg_attr(fuzzing, no_main)]

use oddgirth::forbidden::WitnessRecord;
use oddgirth::generators::mobius_ladder;

include!("replay.rs");

fn run(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(record) = WitnessRecord::from_json(text) else { return };
    let Ok(witness) = record.to_witness() else { return };
    let g = mobius_ladder(8).unwrap();
    for k in 2..=4 {
        let _ = witness.validate(&g, k);
    }
    let again = WitnessRecord::from_json(&witness.to_json()).expect("records reparse");
    assert_eq!(again.to_witness().as_ref(), Ok(&witness));
}

#[cfg(fuzzing)]
libfuzzer_sys::fuzz_target!(|data: &[u8]| run(data));

replay_main!(run);
