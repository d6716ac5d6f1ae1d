import numpy as np
exec(open('oracle1.py').read().split('# mu2 chars')[0])  # reuse defs + G, ga, gb

keym = lambda m: tuple(np.round(m,9).ravel())
# Y(r) multiplicities: dim of joint eigenspace for sign vector (sa,sb) on (ga,gb)
for sa,sb in [(1,1),(1,-1),(-1,1),(-1,-1)]:
    A = np.vstack([ga - sa*np.eye(7), gb - sb*np.eye(7)])
    _,s,_ = np.linalg.svd(A)
    mult = sum(sv<1e-9 for sv in s)
    print("Y mult for", (sa,sb), "=", mult)

# restriction to ker(a2b2): elements with (a2b2)-value 1; char a2b2 = sign vector (-1,-1)
# propagate values
val={keym(np.eye(7)):1}; frontier=[np.eye(7)]
while frontier:
    nf=[]
    for e in frontier:
        for g,s in zip([ga,gb],[-1,-1]):
            p=e@g;k=keym(p)
            if k not in val: val[k]=val[keym(e)]*s; nf.append(p)
    frontier=nf
ker=[e for e in G if val[keym(e)]==1]
print("kernel order:", len(ker))
# trivial multiplicity on kernel: common fixed space of all kernel elements
A=np.vstack([e-np.eye(7) for e in ker])
_,s,_=np.linalg.svd(A); print("trivial mult on ker(a2b2):", sum(sv<1e-9 for sv in s))

# conjugacy classes of G (abelian -> 8)
print("classes:", len(G) if all(np.allclose(a@b,b@a) for a in G for b in G) else "?")
