exec(open('oracle5.py').read().split("# ---- gcal")[0])
import numpy as np
# ---- hcal(3): L | P(2,3) | P'(4,5) | Q(6,7)
def emb(spec):
    # spec: dict block->2x2 (blocks 'P','Pp','Q'), Lsign, optional swap of P,P'
    m=np.zeros((7,7)); m[0,0]=spec.get('L',1.)
    if spec.get('swap'):
        m[1:3,3:5]=spec.get('toP',np.eye(2)); m[3:5,1:3]=spec.get('toPp',np.eye(2))
    else:
        m[1:3,1:3]=spec.get('P',np.eye(2)); m[3:5,3:5]=spec.get('Pp',np.eye(2))
    m[5:7,5:7]=spec.get('Q',np.eye(2))
    return m
e=3
rP = emb({'P':rot2(2*np.pi/e)})
rPp= emb({'Pp':rot2(2*np.pi/e)})
rQ = emb({'Q':rot2(2*np.pi/e)})
u  = emb({'P':np.diag([1.,-1]),'Pp':np.diag([1.,-1])})
w  = emb({'L':-1.,'swap':True,'Q':np.diag([1.,-1])})
analyze("hcal(3)",[rP,rPp,rQ,u,w])
# ---- ical(A4): L | T(2,3,4) | T'(5,6,7)
C3=np.array([[0.,0,1],[1,0,0],[0,1,0]])
D2=np.diag([-1.,-1,1])
def pair3(a,b):
    m=np.zeros((7,7)); m[0,0]=1; m[1:4,1:4]=a; m[4:7,4:7]=b; return m
c =np.zeros((7,7)); c[0,0]=1; c[1:4,1:4]=-np.eye(3); c[4:7,4:7]=-np.eye(3)
sw=np.zeros((7,7)); sw[0,0]=-1; sw[1:4,4:7]=np.eye(3); sw[4:7,1:4]=np.eye(3)
gens=[pair3(C3,np.eye(3)),pair3(D2,np.eye(3)),pair3(np.eye(3),C3),pair3(np.eye(3),D2),c,sw]
analyze("ical(A4)",gens)
