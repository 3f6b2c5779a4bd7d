import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
counts = cars.groupby(["origin", "cylinders"]).size().unstack(fill_value=0)
fig, ax = plt.subplots()
counts.plot.bar(stacked=True, ax=ax)
ax.set_xlabel("origin")
ax.set_ylabel("count")
ax.legend(title="cylinders")
plt.show()
