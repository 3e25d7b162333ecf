"""Transfer empowerment as a detector of whether the listener listens.

On speaker-listener, a transition model is fit to random play and a
listener is trained to head for whichever landmark the speaker names.
Transfer empowerment from speaker to listener is then estimated twice: once
with that listener, and once after zeroing its weights on the message
inputs. Only the reactive listener carries information about the speaker's
symbol, so only it should score above zero (at most ln 3 for three symbols).

    python3 demos/reactivity.py
"""
import numpy as np

from socialemp.fixtures import run_reactivity_fixture

for zeroed in (False, True):
    res = run_reactivity_fixture(zero_message_weights=zeroed)
    label = "message weights zeroed" if zeroed else "reactive listener     "
    trace = " ".join(f"{v:+.2f}" for v in res.curve)
    print(f"{label}: {res.final:+.4f} nats   (training trace {trace})")
print(f"upper bound ln 3 = {np.log(3):.4f}")
