#![cfg_attr(fuzzing, no_main)]

use oddgirth::format::{parse_edge_list, write_edge_list};

include!("replay.rs");

fn run(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_edge_list(text) else { return };
    assert!(g.is_well_formed());
    let canonical = write_edge_list(&g);
    let again = parse_edge_list(&canonical).expect("canonical output parses");
    assert_eq!(again, g);
    assert_eq!(write_edge_list(&again), canonical);
}

#[cfg(fuzzing)]
libfuzzer_sys::fuzz_target!(|data: &[u8]| run(data));

replay_main!(run);
