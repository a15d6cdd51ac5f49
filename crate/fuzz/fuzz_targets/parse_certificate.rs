#![cfg_attr(fuzzing, no_main)]

use oddgirth::format::{parse_certificate, write_certificate};
use oddgirth::generators::cycle;
use oddgirth::hom::verify_hom;
use oddgirth::Graph;

include!("replay.rs");

fn run(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(cert) = parse_certificate(text) else { return };
    assert!(cert.map.iter().all(|&v| v < cert.target_n));
    let again = parse_certificate(&write_certificate(&cert.map, cert.target_n)).expect("written certificate parses");
    assert_eq!(again, cert);
    // Checking against a graph must never panic, whatever the sizes.
    let _ = verify_hom(&cycle(5).unwrap(), &Graph::empty(cert.target_n.min(64)).unwrap(), &cert.map);
}

#[cfg(fuzzing)]
libfuzzer_sys::fuzz_target!(|data: &[u8]| run(data));

replay_main!(run);
