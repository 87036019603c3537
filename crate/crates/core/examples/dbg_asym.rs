use partition_diamonds::asymptotics::*;
use partition_diamonds::qseries::*;
use std::f64::consts::PI;

fn main() {
    // criterion 7 magnitudes
    for (fam, d, nmax) in [("size", 1usize, 4000usize), ("size", 2, 4000), ("schmidt", 1, 2000), ("schmidt", 2, 2000)] {
        let series = if fam == "size" { size_series(d, nmax).unwrap() } else { schmidt_series(d, nmax) };
        let params = if fam == "size" { size_params(d).unwrap() } else { schmidt_params(d).unwrap() };
        let grid: Vec<usize> = (0..5).map(|k| nmax >> (4 - k)).collect();
        let table = compare_exact_vs_asym(&series, &params, &grid).unwrap();
        print!("{fam} d={d}: ");
        for row in &table.rows { print!("({}, {:+.4}) ", row.n, row.log_ratio); }
        println!();
    }
    // paper-literal size lambda for comparison (e^{(d-1)d!/(2(d+1))} literal)
    {
        let d = 2usize;
        let c2 = PI * PI / 12.0;
        let lam_lit = (2.0*PI).powf(-0.5) * ((d as f64 - 1.0) * 2.0 / (2.0 * 3.0)).exp() * 2.0f64.powf(-2.0/6.0);
        let gamma = c2 / 3.0 + PI * PI / 6.0;
        let params = AsymParams::new(lam_lit, 0.5, gamma).unwrap();
        let series = size_series(2, 4000).unwrap();
        let t = compare_exact_vs_asym(&series, &params, &[1000, 2000, 4000]).unwrap();
        print!("size d=2 paper-literal lambda: ");
        for row in &t.rows { print!("({}, {:+.4}) ", row.n, row.log_ratio); }
        println!();
    }
    // criterion 9 magnitudes
    for d in [2usize, 3] {
        let rows = product_asym_check(d, &[0.2, 0.1, 0.05, 0.025]).unwrap();
        println!("d={d} product check:");
        for r in rows { println!("  w={:<6} F_err={:.3e}  G_err={:.3e}", r.w, r.f_rel_err, r.g_rel_err); }
    }
}
