#![cfg_attr(fuzzing, no_main)]

use oddgirth::format::{parse_decomposition, write_decomposition};
use oddgirth::generators::{blowup, cycle};
use oddgirth::hom::BlowupDecomposition;

include!("replay.rs");

fn run(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(classes) = parse_decomposition(text) else { return };
    assert!(classes.iter().all(|c| !c.is_empty()));
    assert_eq!(parse_decomposition(&write_decomposition(&classes)).as_ref(), Ok(&classes));
    let g = blowup(&cycle(5).unwrap(), &[2, 1, 2, 1, 1]).unwrap().graph;
    let d = BlowupDecomposition { classes, base: cycle(5).unwrap() };
    let _ = d.class_map(g.n());
    let _ = d.validate(&g);
}

#[cfg(fuzzing)]
libfuzzer_sys::fuzz_target!(|data: &[u8]| run(data));

replay_main!(run);
