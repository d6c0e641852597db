import numpy as np, time, sys
sys.path.insert(0, '/root/pkg/src')
from gradsim import data, models

t0 = time.time()
cfg = data.SynthDigitsConfig(n_train=10000, n_test=2000, seed=42)
tr, te = data.synth_digits(cfg)
data.save_idx(tr.xs, tr.ys, '/root/pkg/.devruns/train-images.idx', '/root/pkg/.devruns/train-labels.idx')
data.save_idx(te.xs, te.ys, '/root/pkg/.devruns/test-images.idx', '/root/pkg/.devruns/test-labels.idx')
tr = data.load_idx('/root/pkg/.devruns/train-images.idx', '/root/pkg/.devruns/train-labels.idx')
te = data.load_idx('/root/pkg/.devruns/test-images.idx', '/root/pkg/.devruns/test-labels.idx')
print('corpus %.0fs' % (time.time() - t0), flush=True)

m = models.conv_net(seed=0)
print('params', m.n_params, flush=True)
t0 = time.time()
hist = models.train(m, tr.xs, tr.ys, models.TrainConfig(epochs=30, batch_size=128, learning_rate=0.08, momentum=0.9, seed=0, lr_decay=0.95),
                    log_fn=lambda r: print('  epoch %d loss %.4f acc %.4f (%.0fs)' % (r['epoch'], r['loss'], r['accuracy'], time.time()-t0), flush=True))
print('train time %.0fs' % (time.time() - t0), flush=True)
acc = models.accuracy(m, te.xs, te.ys)
print('TEST ACC', acc, flush=True)
models.save_model(m, '/root/pkg/.devruns/probe_model.ckpt')
