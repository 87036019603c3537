fn main() {
    for outcome in partition_diamonds::verify::run_all(std::env::args().any(|a| a == "--quick")) {
        println!("{}", outcome.status_line());
    }
}
