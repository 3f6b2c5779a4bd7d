import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
means = cars.groupby(["origin", "cylinders"])["mpg"].mean().unstack()
fig, ax = plt.subplots()
means.plot.bar(ax=ax)
ax.set_xlabel("origin")
ax.set_ylabel("mean mpg")
ax.legend(title="cylinders")
plt.show()
