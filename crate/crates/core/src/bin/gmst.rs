fn main() {
    std::process::exit(gmst::cli::run(std::env::args_os()));
}
