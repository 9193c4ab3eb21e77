fn main() -> std::process::ExitCode {
    lckc::cli::main()
}
