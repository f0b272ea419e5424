fn main() {
    std::process::exit(ptsemi::cli::run() as i32)
}
