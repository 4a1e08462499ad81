fn main() {
    std::process::exit(deformosc::cli::main_with(std::env::args_os()));
}
