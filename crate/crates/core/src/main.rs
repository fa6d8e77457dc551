fn main() {
    if let Some(n) = std::env::var("KJ_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    std::process::exit(kostant_juggling::cli::run(std::env::args_os()));
}
