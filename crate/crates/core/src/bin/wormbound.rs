fn main() {
    std::process::exit(wormbound::cli::dispatch(std::env::args_os()));
}
