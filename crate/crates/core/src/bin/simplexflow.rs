fn main() {
    std::process::exit(simplexflow::cli::run(std::env::args_os()));
}
