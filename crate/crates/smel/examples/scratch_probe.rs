use smel::dist::WeibullResilience;

fn main() {
    for (name, l, a, e) in [
        ("DHR", 0.15, 0.80, 1.20),
        ("IHR", 0.12, 1.50, 1.00),
        ("BHR", 0.18, 1.30, 0.70),
    ] {
        let p = WeibullResilience::new(l, a, e).unwrap();
        println!(
            "{name}: mean={:.4} horizon={:.2}",
            p.mean().unwrap(),
            p.horizon()
        );
        let mut kappa_min = f64::INFINITY;
        let mut argmin = 0.0;
        let mut t = 0.01;
        while t < p.horizon() {
            let k = p.hazard(t).unwrap() * p.mrl(t).unwrap();
            if k < kappa_min {
                kappa_min = k;
                argmin = t;
            }
            t += 0.05;
        }
        let c_max = if kappa_min >= 1.0 {
            f64::INFINITY
        } else {
            1.0 / (1.0 - kappa_min)
        };
        println!("  kappa_min={kappa_min:.5} at t={argmin:.2}  -> c_max={c_max:.3}");
        // delta-check values on the true baseline
        print!("  ratio m(t)/t: ");
        for t in [1.0, 2.0, 3.0, 5.0, 8.0, 12.0] {
            print!("{:.3} ", p.mrl(t).unwrap() / t);
        }
        println!();
        print!("  Delta(t) (delta=0.5): ");
        for t in [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0, 14.0] {
            let d = p.mrl(t + 0.5).unwrap() / (t + 0.5) - p.mrl(t).unwrap() / t;
            print!("{d:.3} ");
        }
        println!();
    }
}
