fn main() {
    std::process::exit(token_cover::cli::run(std::env::args_os()));
}
