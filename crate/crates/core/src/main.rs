fn main() {
    std::process::exit(isofield::cli::run(std::env::args_os()));
}
