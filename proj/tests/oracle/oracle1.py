import numpy as np, itertools
from fractions import Fraction

def rot(n, i, j, theta):
    m = np.eye(n)
    c, s = np.cos(theta), np.sin(theta)
    m[i,i]=c; m[j,j]=c; m[i,j]=-s; m[j,i]=s
    return m

def close(gens, cap=100000):
    # numeric BFS closure with rounding keys
    key = lambda m: tuple(np.round(m,9).ravel())
    els = {key(np.eye(gens[0].shape[0])): np.eye(gens[0].shape[0])}
    frontier=[np.eye(gens[0].shape[0])]
    while frontier:
        nf=[]
        for e in frontier:
            for g in gens:
                p = e@g
                k=key(p)
                if k not in els:
                    els[k]=p; nf.append(p)
                    if len(els)>cap: raise RuntimeError("too big")
        frontier=nf
    return list(els.values())

# ---- example-1-style instance: blocks [1 | s | s | R(pi/2),R(pi/2) | R(-pi/2),R(pi/2)]
def diag_embed(n, pos, block):
    m = np.eye(n); d = block.shape[0]; m[pos:pos+d, pos:pos+d] = block; return m
n=7
ga = np.eye(7); ga[1,1]=ga[2,2]=-1
ga = ga @ diag_embed(7,3,rot(2,0,1,np.pi/2)[0:2,0:2]) @ diag_embed(7,5,rot(2,0,1,-np.pi/2)[:2,:2])
gb = np.eye(7); gb[1,1]=gb[2,2]=-1
gb = gb @ diag_embed(7,3,rot(2,0,1,np.pi/2)[:2,:2]) @ diag_embed(7,5,rot(2,0,1,np.pi/2)[:2,:2])
G = close([ga,gb]); print("example1 SO-image order:", len(G))

# mu2 characters: on (ga,gb) sign assignments consistent as homomorphism
def mu2_chars(gens, els):
    import itertools as it
    out=[]
    keym = lambda m: tuple(np.round(m,9).ravel())
    idx = {keym(e):i for i,e in enumerate(els)}
    # build words: BFS with value propagation per candidate
    for signs in it.product([1,-1], repeat=len(gens)):
        val = {keym(np.eye(7)):1}
        frontier=[np.eye(7)]
        ok=True
        while frontier and ok:
            nf=[]
            for e in frontier:
                for g,s in zip(gens,signs):
                    p=e@g; k=keym(p); v=val[keym(e)]*s
                    if k in val:
                        if val[k]!=v: ok=False;break
                    else: val[k]=v; nf.append(p)
                if not ok: break
            frontier=nf
        if ok: out.append((signs,val))
    return out
chars = mu2_chars([ga,gb],G)
print("num mu2 chars:", len(chars), "sign vectors:", [c[0] for c in chars])

def u1(eta_val, els, keym):
    for e in els:
        ev = np.linalg.eigvals(e)
        target = eta_val[keym(e)]
        if min(abs(ev-target))>1e-8: return False
    return True
keym = lambda m: tuple(np.round(m,9).ravel())
# X(r): real-type constituents: lines coord1 (trivial), coords 2,3 (sign char) -> X = {1, (-1,-1)}
# u1 check for each char:
for signs,val in chars:
    print("char", signs, "U1:", u1(val,G,keym))
