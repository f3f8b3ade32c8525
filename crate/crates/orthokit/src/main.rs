use clap::Parser;

fn main() {
    // Restore default SIGPIPE so `orthokit ... | head` dies quietly
    // instead of panicking on the closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = orthokit::cli::Cli::parse();
    std::process::exit(orthokit::cli::run(cli));
}
