fn main() {
    std::process::exit(hankel_dual::cli::main_exit());
}
