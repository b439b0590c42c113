fn main() {
    if let Some(n) = std::env::var("TENSLAB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (code, out) = tenslab::cli::run(std::env::args().skip(1));
    print!("{out}");
    std::process::exit(code);
}
