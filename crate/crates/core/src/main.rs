fn main() {
    std::process::exit(hyperfact::cli::run(std::env::args_os()));
}
