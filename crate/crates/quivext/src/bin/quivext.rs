//! Thin command-line entry point; all logic lives in the library.

fn main() {
    std::process::exit(quivext::cli::run(std::env::args_os()));
}
