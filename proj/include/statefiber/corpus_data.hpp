#pragma once

namespace statefiber {

// Bundled fixture table: `name | pd | key=value#tag ...` per line.
// Expectation values are frozen from oracle runs; regenerate with
// `statefiber corpus --print` and review the diff before committing.
inline constexpr const char* kCorpusText = R"CORPUS(
unknot0 | O | allA_adequate=true#derived allA_chi_surface=1#derived allA_circles=1#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=1#derived allB_circles=1#derived allB_fiber=Fiber#derived allB_homogeneous=true#derived allB_tree=true#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=0#derived beta_prime=0#derived chiA=1#derived chiB=1#derived components=1#trivial connected=true#trivial crossings=0#trivial free_loops=1#trivial jones=1*t^(0/2)#derived k_half=0#derived m_half=0#derived pieces=1#trivial seifert_adequate=true#derived seifert_chi_surface=1#derived seifert_circles=1#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=#derived seifert_tree=true#derived writhe=0#derived
kink_pos | X(1,1,2,2) | allA_adequate=true#derived allA_chi_surface=1#derived allA_circles=2#derived allA_fiber=Fiber#derived allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=false#derived allB_chi_surface=0#derived allB_circles=1#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=0#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=1#trivial free_loops=0#trivial jones=1*t^(0/2)#derived k_half=0#derived m_half=0#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=1#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=A#derived seifert_tree=true#derived writhe=1#derived
kink_neg | X(1,2,2,1) | allA_adequate=false#derived allA_chi_surface=0#derived allA_circles=1#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=1#derived allB_circles=2#derived allB_fiber=Fiber#derived allB_homogeneous=true#derived allB_tree=true#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=0#derived beta_prime=0#derived chiA=0#derived chiB=1#derived components=1#trivial connected=true#trivial crossings=1#trivial free_loops=0#trivial jones=1*t^(0/2)#derived k_half=0#derived m_half=0#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=1#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=B#derived seifert_tree=true#derived writhe=-1#derived
unlink2 | O O | allA_adequate=true#derived allA_chi_surface=2#derived allA_circles=2#derived allA_fiber=NotFiber:split#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=2#derived allB_circles=2#derived allB_fiber=NotFiber:split#derived allB_tree=false#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=-1#derived beta_prime=-1#derived chiA=2#derived chiB=2#derived components=2#trivial connected=false#trivial crossings=0#trivial free_loops=2#trivial jones=-1*t^(-1/2)-1*t^(1/2)#derived k_half=1#derived m_half=-1#derived pieces=2#trivial seifert_adequate=true#derived seifert_chi_surface=2#derived seifert_circles=2#derived seifert_fiber=NotFiber:split#derived seifert_label=#derived seifert_tree=false#derived writhe=0#derived
hopf | X(1,4,2,3) X(4,1,3,2) | allA_adequate=true#derived allA_chi_surface=0#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=2#derived allB_fiber=Fiber#derived allB_homogeneous=true#derived allB_tree=true#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=0#derived beta_prime=0#derived chiA=1#derived chiB=1#derived components=2#trivial connected=true#trivial crossings=2#trivial free_loops=0#trivial jones=-1*t^(1/2)-1*t^(5/2)#derived k_half=5#derived m_half=1#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=0#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AA#derived seifert_tree=true#derived writhe=2#derived
trefoil | X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) | allA_adequate=true#derived allA_chi_surface=-1#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=3#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=3#trivial free_loops=0#trivial jones=1*t^(2/2)+1*t^(6/2)-1*t^(8/2)#derived k_half=8#derived m_half=2#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-1#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAA#derived seifert_tree=true#derived writhe=3#derived
trefoil_mirror | X(4,1,5,2) X(6,3,1,4) X(2,5,3,6) | allA_adequate=true#derived allA_chi_surface=0#derived allA_circles=3#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-1#derived allB_circles=2#derived allB_fiber=Fiber#derived allB_homogeneous=true#derived allB_tree=true#derived alpha=1#derived alpha_prime=-1#derived alternating=true#derived beta=0#derived beta_prime=1#derived chiA=0#derived chiB=1#derived components=1#trivial connected=true#trivial crossings=3#trivial free_loops=0#trivial jones=-1*t^(-8/2)+1*t^(-6/2)+1*t^(-2/2)#derived k_half=-2#derived m_half=-8#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-1#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=BBB#derived seifert_tree=true#derived writhe=-3#derived
figure8 | X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) | allA_adequate=true#derived allA_chi_surface=-1#derived allA_circles=3#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-1#derived allB_circles=3#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=-1#derived beta_prime=-1#derived chiA=0#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=4#trivial free_loops=0#trivial jones=1*t^(-4/2)-1*t^(-2/2)+1*t^(0/2)-1*t^(2/2)+1*t^(4/2)#derived k_half=4#derived m_half=-4#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-1#derived seifert_circles=3#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AABB#derived seifert_tree=true#derived writhe=0#derived
torus_2_2 | X(1,4,2,3) X(4,1,3,2) | allA_adequate=true#derived allA_chi_surface=0#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=2#derived allB_fiber=Fiber#derived allB_homogeneous=true#derived allB_tree=true#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=0#derived beta_prime=0#derived chiA=1#derived chiB=1#derived components=2#trivial connected=true#trivial crossings=2#trivial free_loops=0#trivial jones=-1*t^(1/2)-1*t^(5/2)#derived k_half=5#derived m_half=1#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=0#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AA#derived seifert_tree=true#derived writhe=2#derived
torus_2_3 | X(6,4,1,3) X(4,2,5,1) X(2,6,3,5) | allA_adequate=true#derived allA_chi_surface=-1#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=3#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=3#trivial free_loops=0#trivial jones=1*t^(2/2)+1*t^(6/2)-1*t^(8/2)#derived k_half=8#derived m_half=2#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-1#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAA#derived seifert_tree=true#derived writhe=3#derived
torus_2_4 | X(1,6,2,5) X(6,3,7,2) X(3,8,4,7) X(8,1,5,4) | allA_adequate=true#derived allA_chi_surface=-2#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=4#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=2#trivial connected=true#trivial crossings=4#trivial free_loops=0#trivial jones=-1*t^(3/2)-1*t^(7/2)+1*t^(9/2)-1*t^(11/2)#derived k_half=11#derived m_half=3#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-2#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAA#derived seifert_tree=true#derived writhe=4#derived
torus_2_5 | X(10,6,1,5) X(6,2,7,1) X(2,8,3,7) X(8,4,9,3) X(4,10,5,9) | allA_adequate=true#derived allA_chi_surface=-3#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=5#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=5#trivial free_loops=0#trivial jones=1*t^(4/2)+1*t^(8/2)-1*t^(10/2)+1*t^(12/2)-1*t^(14/2)#derived k_half=14#derived m_half=4#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-3#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAAA#derived seifert_tree=true#derived writhe=5#derived
torus_2_6 | X(1,8,2,7) X(8,3,9,2) X(3,10,4,9) X(10,5,11,4) X(5,12,6,11) X(12,1,7,6) | allA_adequate=true#derived allA_chi_surface=-4#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=6#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=2#trivial connected=true#trivial crossings=6#trivial free_loops=0#trivial jones=-1*t^(5/2)-1*t^(9/2)+1*t^(11/2)-1*t^(13/2)+1*t^(15/2)-1*t^(17/2)#derived k_half=17#derived m_half=5#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-4#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAAAA#derived seifert_tree=true#derived writhe=6#derived
torus_2_7 | X(14,8,1,7) X(8,2,9,1) X(2,10,3,9) X(10,4,11,3) X(4,12,5,11) X(12,6,13,5) X(6,14,7,13) | allA_adequate=true#derived allA_chi_surface=-5#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=7#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=7#trivial free_loops=0#trivial jones=1*t^(6/2)+1*t^(10/2)-1*t^(12/2)+1*t^(14/2)-1*t^(16/2)+1*t^(18/2)-1*t^(20/2)#derived k_half=20#derived m_half=6#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-5#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAAAAA#derived seifert_tree=true#derived writhe=7#derived
granny | X(1,5,2,4) X(3,1,4,12) X(5,3,6,2) X(7,11,8,10) X(9,7,10,6) X(11,9,12,8) | allA_adequate=true#derived allA_chi_surface=-3#derived allA_circles=3#derived allA_fiber=Fiber#derived allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=-1#derived allB_circles=5#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=-2#derived beta_prime=0#derived chiA=1#derived chiB=-1#derived components=1#trivial connected=true#trivial crossings=6#trivial free_loops=0#trivial jones=1*t^(4/2)+2*t^(8/2)-2*t^(10/2)+1*t^(12/2)-2*t^(14/2)+1*t^(16/2)#derived k_half=16#derived m_half=4#derived pieces=1#trivial prime=false#derived seifert_adequate=true#derived seifert_chi_surface=-3#derived seifert_circles=3#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAAAA#derived seifert_tree=true#derived writhe=6#derived
square | X(1,5,2,4) X(3,1,4,12) X(5,3,6,2) X(9,6,10,7) X(11,8,12,9) X(7,10,8,11) | allA_adequate=true#derived allA_chi_surface=-2#derived allA_circles=4#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-2#derived allB_circles=4#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=1#derived beta_prime=1#derived chiA=0#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=6#trivial free_loops=0#trivial jones=-1*t^(-6/2)+1*t^(-4/2)-1*t^(-2/2)+3*t^(0/2)-1*t^(2/2)+1*t^(4/2)-1*t^(6/2)#derived k_half=6#derived m_half=-6#derived pieces=1#trivial prime=false#derived seifert_adequate=true#derived seifert_chi_surface=-3#derived seifert_circles=3#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAABBB#derived seifert_tree=true#derived writhe=0#derived
knot_5_1 | X(10,6,1,5) X(6,2,7,1) X(2,8,3,7) X(8,4,9,3) X(4,10,5,9) | allA_adequate=true#derived allA_chi_surface=-3#derived allA_circles=2#derived allA_fiber=Fiber#paper allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=true#derived allB_chi_surface=0#derived allB_circles=5#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=1#derived alternating=true#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=5#trivial free_loops=0#trivial jones=1*t^(4/2)+1*t^(8/2)-1*t^(10/2)+1*t^(12/2)-1*t^(14/2)#derived k_half=14#derived m_half=4#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-3#derived seifert_circles=2#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAAA#derived seifert_tree=true#derived writhe=5#derived
knot_5_2 | X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3) | allA_adequate=true#derived allA_chi_surface=-2#derived allA_circles=3#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-1#derived allB_circles=4#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=1#derived alpha_prime=-1#derived alternating=true#derived beta=-1#derived beta_prime=1#derived chiA=0#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=5#trivial free_loops=0#trivial jones=-1*t^(-12/2)+1*t^(-10/2)-1*t^(-8/2)+2*t^(-6/2)-1*t^(-4/2)+1*t^(-2/2)#derived k_half=-2#derived m_half=-12#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-1#derived seifert_circles=4#derived seifert_fiber=NotFiber:not-tree#derived seifert_homogeneous=true#derived seifert_label=BBBBB#derived seifert_tree=false#derived writhe=-5#derived
knot_6_1 | X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7) | allA_adequate=true#derived allA_chi_surface=-3#derived allA_circles=3#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-1#derived allB_circles=5#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=-1#derived beta_prime=-1#derived chiA=0#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=6#trivial free_loops=0#trivial jones=1*t^(-8/2)-1*t^(-6/2)+1*t^(-4/2)-2*t^(-2/2)+2*t^(0/2)-1*t^(2/2)+1*t^(4/2)#derived k_half=4#derived m_half=-8#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-1#derived seifert_circles=5#derived seifert_fiber=NotFiber:not-tree#derived seifert_homogeneous=true#derived seifert_label=BBAABB#derived seifert_tree=false#derived writhe=-2#derived
knot_6_2 | X(1,4,2,5) X(5,10,6,11) X(3,9,4,8) X(9,3,10,2) X(7,12,8,1) X(11,6,12,7) | allA_adequate=true#derived allA_chi_surface=-1#derived allA_circles=5#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-3#derived allB_circles=3#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=1#derived alpha_prime=1#derived alternating=true#derived beta=-1#derived beta_prime=-2#derived chiA=-1#derived chiB=0#derived components=1#trivial connected=true#trivial crossings=6#trivial free_loops=0#trivial jones=1*t^(-10/2)-2*t^(-8/2)+2*t^(-6/2)-2*t^(-4/2)+2*t^(-2/2)-1*t^(0/2)+1*t^(2/2)#derived k_half=2#derived m_half=-10#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-3#derived seifert_circles=3#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=BBAABB#derived seifert_tree=true#derived writhe=-2#derived
knot_6_3 | X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7) | allA_adequate=true#derived allA_chi_surface=-2#derived allA_circles=4#derived allA_fiber=NotFiber:not-tree#derived allA_homogeneous=true#derived allA_tree=false#derived allB_adequate=true#derived allB_chi_surface=-2#derived allB_circles=4#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=-1#derived alternating=true#derived beta=2#derived beta_prime=2#derived chiA=-1#derived chiB=-1#derived components=1#trivial connected=true#trivial crossings=6#trivial free_loops=0#trivial jones=-1*t^(-6/2)+2*t^(-4/2)-2*t^(-2/2)+3*t^(0/2)-2*t^(2/2)+2*t^(4/2)-1*t^(6/2)#derived k_half=6#derived m_half=-6#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-3#derived seifert_circles=3#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AABBBA#derived seifert_tree=true#derived writhe=0#derived
pretzel_m2_3_7 | X(24,14,1,13) X(12,2,13,1) X(23,5,24,4) X(3,23,4,22) X(21,3,22,2) X(5,15,6,14) X(15,7,16,6) X(7,17,8,16) X(17,9,18,8) X(9,19,10,18) X(19,11,20,10) X(11,21,12,20) | allA_adequate=true#derived allA_chi_surface=-9#derived allA_circles=3#derived allA_fiber=Fiber#derived allA_homogeneous=true#derived allA_tree=true#derived allB_adequate=false#derived allB_chi_surface=-3#derived allB_circles=9#derived allB_fiber=NotFiber:not-tree#derived allB_homogeneous=true#derived allB_tree=false#derived alpha=-1#derived alpha_prime=1#derived alternating=false#derived beta=1#derived beta_prime=0#derived chiA=1#derived chiB=-2#derived components=1#trivial connected=true#trivial crossings=12#trivial free_loops=0#trivial jones=1*t^(10/2)+1*t^(14/2)-1*t^(22/2)+1*t^(24/2)-1*t^(26/2)#derived k_half=26#derived m_half=10#derived pieces=1#trivial prime=true#derived seifert_adequate=true#derived seifert_chi_surface=-9#derived seifert_circles=3#derived seifert_fiber=Fiber#derived seifert_homogeneous=true#derived seifert_label=AAAAAAAAAAAA#derived seifert_tree=true#derived writhe=12#derived
)CORPUS";

}  // namespace statefiber
