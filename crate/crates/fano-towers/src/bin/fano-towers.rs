fn main() {
    std::process::exit(fano_towers::cli::run(std::env::args_os()));
}
