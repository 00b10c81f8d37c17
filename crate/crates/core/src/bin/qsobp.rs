fn main() {
    std::process::exit(qsobp::commands::run_from_args(std::env::args_os()));
}
