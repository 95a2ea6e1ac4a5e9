use landen_kit::*;
fn main() {
    let p = Order::new(5).unwrap();
    let m = ModulusParameter::new(0.1).unwrap();
    let down = make_transform_data(p, &m).unwrap().m_tilde;
    println!("down = {:e}  (complement {:e})", down.m(), down.m_complement());
    let back_up = make_gauss_data(p, &down).unwrap().m_tilde.m();
    println!("back_up   = {:.17}  diff {:e}", back_up, (back_up - 0.1).abs());
    let up = make_gauss_data(p, &m).unwrap().m_tilde;
    println!("up = {:.17} (complement {:e})", up.m(), up.m_complement());
    let back_down = make_transform_data(p, &up).unwrap().m_tilde.m();
    println!("back_down = {:.17}  diff {:e}", back_down, (back_down - 0.1).abs());
}
