fn main() -> std::process::ExitCode {
    superwhit::cli::main()
}
