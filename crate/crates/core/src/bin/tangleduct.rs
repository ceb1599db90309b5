fn main() -> std::process::ExitCode {
    tangleduct::cli::main()
}
