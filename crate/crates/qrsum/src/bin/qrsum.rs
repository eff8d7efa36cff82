use clap::Parser;

fn main() {
    // Die quietly when a downstream pipe closes (e.g. `qrsum table … | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = qrsum::cli::Cli::parse();
    std::process::exit(qrsum::cli::run(cli));
}
