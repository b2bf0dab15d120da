use std::process::exit;

fn main() {
    exit(tm110::cli::main(std::env::args_os()));
}
