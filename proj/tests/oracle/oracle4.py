import numpy as np
phi=(1+np.sqrt(5))/2
C=np.array([[0.,0.,1.],[1.,0.,0.],[0.,1.,0.]])
R5=0.5*np.array([[phi-1,-phi,1.],[phi,1.,phi-1],[-1.,phi-1,phi]])
print("R5 orth:",np.allclose(R5@R5.T,np.eye(3)),"det:",np.linalg.det(R5).round(6))
def order(m):
    p=m.copy()
    for k in range(1,40):
        if np.allclose(p,np.eye(3)): return k
        p=p@m
    return 0
print("ord R5:",order(R5),"ord C:",order(C),"ord C@R5:",order(C@R5))
def close(gens, cap=20000):
    key=lambda m: tuple(np.round(m,8).ravel())
    I=np.eye(3); els={key(I):I}; fr=[I]
    while fr:
        nf=[]
        for e in fr:
            for g in gens:
                p=e@g;k=key(p)
                if k not in els:
                    els[k]=p;nf.append(p)
                    if len(els)>cap: raise RuntimeError("big")
        fr=nf
    return els
els=close([C,R5]); print("order <C,R5> =",len(els))
# pi-rotation about axis (0,1,phi) (a vertex): in <C,R5>? R5 is about which axis? find eigvec for ev 1
w,v=np.linalg.eig(R5); ax=np.real(v[:,np.argmin(abs(w-1))]); print("R5 axis:",(ax/ax[2]).round(6), "(0,1,phi)/phi:",(np.array([0,1,phi])/phi).round(6))
# lift vectors for R5 (rotation by 2pi/5 about axis a=(0,1,phi)/|.|):
# u = e1 (perp to a? (0,1,phi).e1=0 yes!), w2 = cos(pi/5) u + sin(pi/5) (a_hat x u)
a=np.array([0,1,phi]); a=a/np.linalg.norm(a)
u=np.array([1.,0,0]); w2=np.cos(np.pi/5)*u+np.sin(np.pi/5)*np.cross(a,u)
# two reflections R_w2 R_u = rotation by 2*angle(u,w2)=2pi/5 about a (sign TBD)
def refl(v): return np.eye(3)-2*np.outer(v,v)
cand=refl(w2)@refl(u)
print("R_w2 R_u == R5:", np.allclose(cand,R5), " == R5^-1:", np.allclose(cand,R5.T))
