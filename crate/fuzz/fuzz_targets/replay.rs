// Outside `cargo fuzz` each target is a plain binary that runs its body on
// every file named on the command line, so the corpus can be replayed on a
// stable toolchain.
macro_rules! replay_main {
    ($body:path) => {
        #[cfg(not(fuzzing))]
        fn main() {
            for path in std::env::args().skip(1) {
                let data = std::fs::read(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
                $body(&data);
            }
        }
    };
}
