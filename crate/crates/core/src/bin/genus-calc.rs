fn main() {
    std::process::exit(genus_calc::cli::main_with_args(std::env::args_os()));
}
