fn main() {
    let roots = partition_diamonds::specfun::roots_f64(&[1.0, 3.0, 3.0, 1.0]).unwrap();
    for r in &roots { println!("{:+.16e} {:+.16e}", r.re, r.im); }
    let rec = partition_diamonds::specfun::roots::reconstruct(1.0, &roots);
    println!("{rec:?}");
}
