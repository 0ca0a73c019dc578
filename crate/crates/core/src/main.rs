fn main() -> std::process::ExitCode {
    idealtop::cli::main()
}
