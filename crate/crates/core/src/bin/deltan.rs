fn main() -> std::process::ExitCode {
    deltan::cli::main()
}
